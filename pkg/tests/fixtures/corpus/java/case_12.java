import java . util . * ;
import java . lang . * ;

class CASE_12 {

    static int f_gold ( int a [ ] ) {
        int s = 0 ;
        for ( int i = 0 ; i < a . length ; i ++ ) {
            s += a [ i ] * 3 ;
        }
        return s ;
    }

    public static void main ( String args [ ] ) {
        System . out . println ( f_gold ( new int [ ] { 1 , 2 , 3 } ) ) ;
    }
}
