import java . util . * ;
import java . lang . * ;

class CASE_41 {

    static boolean f_gold ( int n ) {
        if ( n <= 1 ) {
            return false ;
        }
        for ( int i = 3 ; i < n ; i ++ ) {
            if ( n % i == 0 ) {
                return false ;
            }
        }
        return true ;
    }

    public static void main ( String args [ ] ) {
        System . out . println ( f_gold ( 29 ) ) ;
    }
}
